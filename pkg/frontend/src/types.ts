/** Wire types for the query API's JSON format. */

export interface ApiDate {
  year: number;
  month: number | null;
  day: number | null;
  end_month: number | null;
  end_day: number | null;
}

export interface ApiLink {
  target: string;
  anchor: string;
}

export interface ApiImage {
  file_title: string;
  thumb_url: string;
  width_px: number;
}

export interface ApiEvent {
  id: string;
  lang: string;
  date: ApiDate;
  granularity: "year" | "month" | "day";
  category_path: string[];
  description_wiki: string;
  description_plain: string;
  /** present when the request carried html=true */
  description_html?: string;
  /** present when the request carried links=true */
  links?: ApiLink[];
  image: ApiImage | null;
  source_title: string;
  line_no: number;
}

export interface SearchResponse {
  events: ApiEvent[];
}

export interface HealthResponse {
  status: string;
  events: number;
}
